import { App } from './app.js';

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get('service') ?? 'http://127.0.0.1:8765';
new App(document.getElementById('app')!, baseUrl);
